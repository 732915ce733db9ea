#pragma once

#include "anharmonic/error.hpp"
#include "anharmonic/families.hpp"
#include "anharmonic/fit.hpp"
#include "anharmonic/format.hpp"
#include "anharmonic/generator.hpp"
#include "anharmonic/numerics.hpp"
#include "anharmonic/oscillator.hpp"
#include "anharmonic/report.hpp"
#include "anharmonic/states.hpp"
#include "anharmonic/verify.hpp"
