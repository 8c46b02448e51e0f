#pragma once

#include "errors.hpp"
#include "free_group.hpp"
#include "integer_matrix.hpp"
#include "justification.hpp"
#include "lattice.hpp"
#include "report.hpp"
#include "rules.hpp"
#include "stallings.hpp"
#include "substitution.hpp"
#include "tower.hpp"
#include "verdicts.hpp"
#include "version.hpp"
