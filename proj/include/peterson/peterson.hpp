#pragma once

#include "bigint.hpp"
#include "billey.hpp"
#include "calculus.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "lie_type.hpp"
#include "root_system.hpp"
#include "subset.hpp"
#include "weyl.hpp"
#include "words.hpp"
