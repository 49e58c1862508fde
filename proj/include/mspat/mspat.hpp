#pragma once

#include "mspat/bigcount.hpp"
#include "mspat/bijections.hpp"
#include "mspat/classify.hpp"
#include "mspat/core.hpp"
#include "mspat/enumerate.hpp"
#include "mspat/error.hpp"
#include "mspat/formulas.hpp"
#include "mspat/gentree.hpp"
#include "mspat/growth.hpp"
#include "mspat/quadratic.hpp"
#include "mspat/verify.hpp"
