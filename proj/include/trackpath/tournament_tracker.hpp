#pragma once

#include "trackpath/forcing.hpp"
#include "trackpath/graph.hpp"

namespace trackpath {

/// Optimum tracking set of a tournament s-t graph: after reduction, marks
/// every x with a -> x -> b for an arc (a, b) that lies on an s-t path of
/// G - x. Throws ClassMismatchError (witness: the defective pair) when g is not
/// a tournament.
TrackingSet track_tournament(const StGraph& g, ForcingOptions options = {});

}  // namespace trackpath
