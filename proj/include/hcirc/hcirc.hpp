#pragma once

#include "hcirc/closed_form.hpp"
#include "hcirc/errors.hpp"
#include "hcirc/numeric.hpp"
#include "hcirc/sequence.hpp"
#include "hcirc/serialize.hpp"
#include "hcirc/structmat.hpp"
#include "hcirc/verify.hpp"
