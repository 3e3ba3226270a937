#ifndef WITTPATHS_WITTPATHS_HPP
#define WITTPATHS_WITTPATHS_HPP

#include "lie_dims.hpp"
#include "numth.hpp"
#include "oracle.hpp"
#include "path_counts.hpp"
#include "series.hpp"
#include "sign_counts.hpp"
#include "verify.hpp"

#endif
