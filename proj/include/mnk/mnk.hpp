#ifndef MNK_MNK_HPP
#define MNK_MNK_HPP

#include "mnk/cell_oracle.hpp"
#include "mnk/forms.hpp"
#include "mnk/laurent.hpp"
#include "mnk/mapping_torus.hpp"
#include "mnk/matrix.hpp"
#include "mnk/mv_engine.hpp"
#include "mnk/novikov.hpp"
#include "mnk/number_field.hpp"
#include "mnk/poly.hpp"
#include "mnk/poly_factor.hpp"
#include "mnk/poly_fraction.hpp"
#include "mnk/rational.hpp"
#include "mnk/smith.hpp"
#include "mnk/sturm.hpp"

#endif
