#pragma once

#include "abconv/generation/conjugate.hpp"
#include "abconv/generation/envelope.hpp"
#include "abconv/generation/functions.hpp"
