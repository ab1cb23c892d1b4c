#pragma once

#include "simplex_lab/catalog.hpp"
#include "simplex_lab/curves.hpp"
#include "simplex_lab/errors.hpp"
#include "simplex_lab/fiber.hpp"
#include "simplex_lab/indexing.hpp"
#include "simplex_lab/json_io.hpp"
#include "simplex_lab/laurent.hpp"
#include "simplex_lab/linearization.hpp"
#include "simplex_lab/matrix.hpp"
#include "simplex_lab/metrics.hpp"
#include "simplex_lab/quad_ext.hpp"
#include "simplex_lab/rational.hpp"
#include "simplex_lab/report.hpp"
#include "simplex_lab/ring.hpp"
