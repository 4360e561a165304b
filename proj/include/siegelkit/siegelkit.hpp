#pragma once

#include "siegelkit/arith.hpp"
#include "siegelkit/bqf.hpp"
#include "siegelkit/classgroup.hpp"
#include "siegelkit/cyclotomic.hpp"
#include "siegelkit/errors.hpp"
#include "siegelkit/jacobi.hpp"
#include "siegelkit/linalg.hpp"
#include "siegelkit/periods.hpp"
#include "siegelkit/qexp.hpp"
#include "siegelkit/siegel.hpp"
#include "siegelkit/table_io.hpp"
