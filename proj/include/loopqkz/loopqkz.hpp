#pragma once

#include "loopqkz/errors.hpp"
#include "loopqkz/exactfield.hpp"
#include "loopqkz/sparse.hpp"
#include "loopqkz/linkpat.hpp"
#include "loopqkz/baxter.hpp"
#include "loopqkz/linalg.hpp"
#include "loopqkz/transfer.hpp"
#include "loopqkz/chars.hpp"
#include "loopqkz/groundstate.hpp"
#include "loopqkz/random.hpp"
#include "loopqkz/suites.hpp"
