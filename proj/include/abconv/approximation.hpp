#pragma once

#include "abconv/approximation/chain_rule.hpp"
#include "abconv/approximation/convolution.hpp"
#include "abconv/approximation/eps_subdiff.hpp"
#include "abconv/approximation/infinitesimal.hpp"
