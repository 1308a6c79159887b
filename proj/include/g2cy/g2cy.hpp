#pragma once

#include "g2cy/root_system.hpp"
#include "g2cy/parabolic.hpp"
#include "g2cy/reps.hpp"
#include "g2cy/cohomology.hpp"
#include "g2cy/koszul.hpp"
#include "g2cy/invariants.hpp"
#include "g2cy/classify.hpp"
#include "g2cy/report.hpp"
