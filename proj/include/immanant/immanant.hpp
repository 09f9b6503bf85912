#pragma once

#include "immanant/bigint.hpp"
#include "immanant/charpoly.hpp"
#include "immanant/determinant.hpp"
#include "immanant/errors.hpp"
#include "immanant/formats.hpp"
#include "immanant/graph.hpp"
#include "immanant/identities.hpp"
#include "immanant/json_io.hpp"
#include "immanant/matrix.hpp"
#include "immanant/modular.hpp"
#include "immanant/parallel.hpp"
#include "immanant/polynomial.hpp"
#include "immanant/random.hpp"
#include "immanant/reconstruct.hpp"
#include "immanant/second_immanant.hpp"
