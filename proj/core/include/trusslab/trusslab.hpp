#pragma once

#include "trusslab/census.hpp"
#include "trusslab/error.hpp"
#include "trusslab/exactness.hpp"
#include "trusslab/heap.hpp"
#include "trusslab/hom.hpp"
#include "trusslab/io.hpp"
#include "trusslab/module.hpp"
#include "trusslab/morphism.hpp"
#include "trusslab/parallel.hpp"
#include "trusslab/table.hpp"
#include "trusslab/truss.hpp"
