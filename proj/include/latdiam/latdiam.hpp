#pragma once

#include "latdiam/core.hpp"
#include "latdiam/lines2d.hpp"
#include "latdiam/diameter2d.hpp"
#include "latdiam/oracle.hpp"
#include "latdiam/dilation_count.hpp"
#include "latdiam/borsuk.hpp"
#include "latdiam/constructions.hpp"
#include "latdiam/io.hpp"
#include "latdiam/svg.hpp"
