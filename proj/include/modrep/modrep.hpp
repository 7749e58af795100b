#pragma once

#include "modrep/charsums.hpp"
#include "modrep/cyclotomic.hpp"
#include "modrep/eisenstein.hpp"
#include "modrep/matrix.hpp"
#include "modrep/psu2.hpp"
#include "modrep/repcheck.hpp"
#include "modrep/reppair.hpp"
#include "modrep/serialize.hpp"
#include "modrep/suites.hpp"
#include "modrep/verify.hpp"
#include "modrep/weil.hpp"
