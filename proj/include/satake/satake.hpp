#pragma once

#include "satake/numeric.hpp"
#include "satake/cartan_type.hpp"
#include "satake/root_system.hpp"
#include "satake/weyl_group.hpp"
#include "satake/representation.hpp"
#include "satake/qpolynomial.hpp"
#include "satake/qanalog.hpp"
#include "satake/tableau.hpp"
#include "satake/tensor.hpp"
#include "satake/realform.hpp"
#include "satake/stalks.hpp"
#include "satake/polynomial.hpp"
#include "satake/hilbert.hpp"
#include "satake/molien.hpp"
#include "satake/graded.hpp"
#include "satake/matrix.hpp"
#include "satake/laurent.hpp"
#include "satake/centralizer.hpp"
#include "satake/verify.hpp"
