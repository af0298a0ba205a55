#pragma once

#include "ueb/basis_set.hpp"
#include "ueb/certificate.hpp"
#include "ueb/core.hpp"
#include "ueb/extension.hpp"
#include "ueb/hadamard.hpp"
#include "ueb/lift.hpp"
#include "ueb/pattern.hpp"
#include "ueb/sebk.hpp"
#include "ueb/sec3.hpp"
#include "ueb/serialize.hpp"
#include "ueb/verify.hpp"
