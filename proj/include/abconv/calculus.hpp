#pragma once

#include "abconv/calculus/composition.hpp"
#include "abconv/calculus/family.hpp"
