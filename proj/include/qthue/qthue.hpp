#pragma once

#include <qthue/arith.hpp>
#include <qthue/conic.hpp>
#include <qthue/diagonalize.hpp>
#include <qthue/elliptic.hpp>
#include <qthue/enumerate.hpp>
#include <qthue/errors.hpp>
#include <qthue/gap_verify.hpp>
#include <qthue/integer.hpp>
#include <qthue/log_linear.hpp>
#include <qthue/pell.hpp>
#include <qthue/polynomial.hpp>
#include <qthue/quartic_form.hpp>
#include <qthue/roots.hpp>
#include <qthue/siegel_bounds.hpp>
#include <qthue/solver.hpp>
#include <qthue/table.hpp>
#include <qthue/tzanakis.hpp>
