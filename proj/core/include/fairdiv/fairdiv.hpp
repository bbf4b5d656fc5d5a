#pragma once

#include "fairdiv/fbta.hpp"
#include "fairdiv/graph.hpp"
#include "fairdiv/ido.hpp"
#include "fairdiv/model.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/pipeline.hpp"
#include "fairdiv/rational.hpp"
#include "fairdiv/round.hpp"
#include "fairdiv/split.hpp"
