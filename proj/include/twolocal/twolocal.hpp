#pragma once

#include "twolocal/rational.hpp"
#include "twolocal/errors.hpp"
#include "twolocal/element.hpp"
#include "twolocal/text.hpp"
#include "twolocal/io.hpp"
#include "twolocal/linear.hpp"
#include "twolocal/derivations.hpp"
#include "twolocal/derivation_space.hpp"
#include "twolocal/two_local.hpp"
#include "twolocal/decompose.hpp"
#include "twolocal/classify.hpp"
#include "twolocal/random.hpp"
#include "twolocal/json.hpp"
#include "twolocal/reproduce.hpp"
