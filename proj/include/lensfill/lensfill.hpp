#pragma once

#include "lensfill/rationals.hpp"
#include "lensfill/tridiag.hpp"
#include "lensfill/zero_tuples.hpp"
#include "lensfill/fillings.hpp"
#include "lensfill/theorems.hpp"
#include "lensfill/records.hpp"
