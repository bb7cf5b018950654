#pragma once

#include "hfgt/adjacency.hpp"
#include "hfgt/incidence.hpp"
#include "hfgt/io/exporters.hpp"
#include "hfgt/io/model_json.hpp"
#include "hfgt/model.hpp"
#include "hfgt/operand_net.hpp"
#include "hfgt/types.hpp"
#include "hfgt/validate.hpp"
