#pragma once

#include "tokenlab/export.hpp"
#include "tokenlab/families.hpp"
#include "tokenlab/formulas.hpp"
#include "tokenlab/graph.hpp"
#include "tokenlab/isomorphism.hpp"
#include "tokenlab/mis.hpp"
#include "tokenlab/operations.hpp"
#include "tokenlab/token.hpp"
#include "tokenlab/witnesses.hpp"
