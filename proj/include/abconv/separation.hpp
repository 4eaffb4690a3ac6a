#pragma once

#include "abconv/separation/cones.hpp"
#include "abconv/separation/sandwich.hpp"
