#pragma once

#include "postgroup/action_postgroup.hpp"
#include "postgroup/error.hpp"
#include "postgroup/finite_postgroup.hpp"
#include "postgroup/free_postgroup.hpp"
#include "postgroup/group_table.hpp"
#include "postgroup/magma.hpp"
#include "postgroup/magnus.hpp"
#include "postgroup/permutation.hpp"
#include "postgroup/rational.hpp"
#include "postgroup/tensor.hpp"
#include "postgroup/tensor_text.hpp"
#include "postgroup/words.hpp"
