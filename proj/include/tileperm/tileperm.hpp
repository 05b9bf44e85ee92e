#pragma once

#include "tileperm/bigint.hpp"
#include "tileperm/enumerate.hpp"
#include "tileperm/errors.hpp"
#include "tileperm/flipclasses.hpp"
#include "tileperm/partition.hpp"
#include "tileperm/plabic.hpp"
#include "tileperm/scott.hpp"
#include "tileperm/strandmap.hpp"
#include "tileperm/tiling.hpp"
#include "tileperm/verify.hpp"
