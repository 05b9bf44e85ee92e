#include "tileperm/tileperm.hpp"
