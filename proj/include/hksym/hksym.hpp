#pragma once

#include "hksym/errors.hpp"
#include "hksym/gauss_rat.hpp"
#include "hksym/matrix.hpp"
#include "hksym/symplectic.hpp"
#include "hksym/sym_tensor.hpp"
#include "hksym/random.hpp"
#include "hksym/lie_algebra.hpp"
#include "hksym/hk_algebra.hpp"
#include "hksym/real_form.hpp"
#include "hksym/upoly.hpp"
#include "hksym/dim8.hpp"
#include "hksym/io.hpp"
#include "hksym/analysis.hpp"
#include "hksym/generators.hpp"
