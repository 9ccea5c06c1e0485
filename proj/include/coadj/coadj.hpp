#pragma once

#include "coadj/errors.hpp"
#include "coadj/rational.hpp"
#include "coadj/roots.hpp"
#include "coadj/linalg.hpp"
#include "coadj/polynomial.hpp"
#include "coadj/weyl.hpp"
#include "coadj/diagram.hpp"
#include "coadj/minors.hpp"
#include "coadj/invariants.hpp"
#include "coadj/verify.hpp"
#include "coadj/serialize.hpp"
