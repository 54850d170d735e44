#pragma once

#include "affschur/sampling.hpp"

namespace testing_helpers = affschur::sampling;
