#ifndef YBE_YBE_HPP
#define YBE_YBE_HPP

#include "algebra.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "permutational.hpp"
#include "retraction.hpp"
#include "solution.hpp"

#endif  // YBE_YBE_HPP
