#pragma once

#include "harmcheck/bernoulli.hpp"
#include "harmcheck/check_result.hpp"
#include "harmcheck/checks.hpp"
#include "harmcheck/errors.hpp"
#include "harmcheck/harmonic.hpp"
#include "harmcheck/mhs.hpp"
#include "harmcheck/rational.hpp"
#include "harmcheck/registry.hpp"
#include "harmcheck/report.hpp"
#include "harmcheck/residue.hpp"
#include "harmcheck/sieve.hpp"
