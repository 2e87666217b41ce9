#pragma once

#include "polyring/analysis.hpp"
#include "polyring/catalog.hpp"
#include "polyring/constructions.hpp"
#include "polyring/embedding.hpp"
#include "polyring/error.hpp"
#include "polyring/polyfun.hpp"
#include "polyring/polynomial.hpp"
#include "polyring/ring.hpp"
#include "polyring/theorems.hpp"
#include "polyring/verdict.hpp"
