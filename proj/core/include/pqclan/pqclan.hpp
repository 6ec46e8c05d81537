#pragma once

#include "pqclan/clan.hpp"
#include "pqclan/error.hpp"
#include "pqclan/json_io.hpp"
#include "pqclan/permutation.hpp"
#include "pqclan/richardson.hpp"
#include "pqclan/schubert_oracle.hpp"
#include "pqclan/structure_constants.hpp"
#include "pqclan/weak_action.hpp"
