/* ctxmap: activity-aware LUT mapping library
 * Copyright (C) 2026  ctxmap contributors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file ctxmap.hpp
  \brief Convenience header including the whole library
*/

#pragma once

#include "ctxmap/activity.hpp"
#include "ctxmap/aig.hpp"
#include "ctxmap/aiger.hpp"
#include "ctxmap/blif.hpp"
#include "ctxmap/config.hpp"
#include "ctxmap/ctxsplit.hpp"
#include "ctxmap/cut_function.hpp"
#include "ctxmap/cuts.hpp"
#include "ctxmap/equivalence.hpp"
#include "ctxmap/flow.hpp"
#include "ctxmap/mapping.hpp"
#include "ctxmap/metrics.hpp"
#include "ctxmap/simulation.hpp"
#include "ctxmap/split.hpp"
#include "ctxmap/truth_table.hpp"
