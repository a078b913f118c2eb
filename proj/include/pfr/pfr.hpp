#pragma once

#include "pfr/builtins.hpp"
#include "pfr/completion.hpp"
#include "pfr/enumerate.hpp"
#include "pfr/error.hpp"
#include "pfr/frame.hpp"
#include "pfr/harness.hpp"
#include "pfr/io.hpp"
#include "pfr/rational.hpp"
#include "pfr/realfn.hpp"
#include "pfr/sample.hpp"
#include "pfr/space.hpp"
#include "pfr/spatial.hpp"
#include "pfr/sublocale.hpp"
