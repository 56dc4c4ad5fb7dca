#pragma once

#include "heroix/canonical.hpp"
#include "heroix/chromatic.hpp"
#include "heroix/colorings.hpp"
#include "heroix/containment.hpp"
#include "heroix/enumerate.hpp"
#include "heroix/error.hpp"
#include "heroix/forest.hpp"
#include "heroix/generators.hpp"
#include "heroix/io.hpp"
#include "heroix/limits.hpp"
#include "heroix/structure.hpp"
#include "heroix/tournament.hpp"
