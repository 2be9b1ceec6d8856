#pragma once

#include "gpac/complexity.hpp"
#include "gpac/demos.hpp"
#include "gpac/error.hpp"
#include "gpac/godel.hpp"
#include "gpac/interpreters.hpp"
#include "gpac/linalg.hpp"
#include "gpac/pac.hpp"
#include "gpac/spectra.hpp"
#include "gpac/text_io.hpp"
