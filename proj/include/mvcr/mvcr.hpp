#pragma once

#include "mvcr/cartan.hpp"
#include "mvcr/character.hpp"
#include "mvcr/codec.hpp"
#include "mvcr/coweight.hpp"
#include "mvcr/demazure.hpp"
#include "mvcr/errors.hpp"
#include "mvcr/extremal.hpp"
#include "mvcr/io.hpp"
#include "mvcr/mvcrystal.hpp"
#include "mvcr/parallel.hpp"
#include "mvcr/polytope.hpp"
#include "mvcr/root_system.hpp"
#include "mvcr/tensorops.hpp"
#include "mvcr/verify.hpp"
#include "mvcr/weyl.hpp"
