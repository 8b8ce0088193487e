#pragma once

// Umbrella header: the whole library.

#include "multistruct/algebra.hpp"
#include "multistruct/analysis.hpp"
#include "multistruct/corpus.hpp"
#include "multistruct/errors.hpp"
#include "multistruct/groebner.hpp"
#include "multistruct/ideal.hpp"
#include "multistruct/linalg.hpp"
#include "multistruct/monomial.hpp"
#include "multistruct/polynomial.hpp"
#include "multistruct/problem.hpp"
#include "multistruct/report.hpp"
#include "multistruct/scalars.hpp"
#include "multistruct/structure.hpp"
#include "multistruct/verdicts.hpp"
