#ifndef BIGRAPH_BIGRAPH_HPP
#define BIGRAPH_BIGRAPH_HPP

#include "bigraph/asteroids.hpp"
#include "bigraph/aux_graph.hpp"
#include "bigraph/certificates.hpp"
#include "bigraph/core.hpp"
#include "bigraph/implication.hpp"
#include "bigraph/oracle.hpp"
#include "bigraph/orientation.hpp"
#include "bigraph/patterns.hpp"
#include "bigraph/recognizers.hpp"

#endif  // BIGRAPH_BIGRAPH_HPP
