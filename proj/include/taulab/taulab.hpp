// SPDX-FileCopyrightText: (c) 2026 The taulab authors
//
// SPDX-License-Identifier: Apache-2.0

// Everything at once.

#pragma once

#include "taulab/algebra.hpp"
#include "taulab/enumerate.hpp"
#include "taulab/field.hpp"
#include "taulab/homological.hpp"
#include "taulab/io.hpp"
#include "taulab/linalg.hpp"
#include "taulab/module_ops.hpp"
#include "taulab/polynomial.hpp"
#include "taulab/quiver.hpp"
#include "taulab/representation.hpp"
#include "taulab/ring.hpp"
#include "taulab/tilting.hpp"
#include "taulab/verify.hpp"
