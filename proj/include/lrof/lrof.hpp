/*!
  \file lrof.hpp
  \brief Umbrella header
*/

#pragma once

#include "chow.hpp"
#include "classify.hpp"
#include "enumerate.hpp"
#include "formula.hpp"
#include "monotone.hpp"
#include "patterns.hpp"
#include "random_functions.hpp"
#include "rational_lp.hpp"
#include "readonce.hpp"
#include "report_json.hpp"
#include "threshold.hpp"
#include "truth_table.hpp"
#include "verify.hpp"
