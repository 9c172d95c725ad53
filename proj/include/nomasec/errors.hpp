// SPDX-License-Identifier: Apache-2.0
//
// nomasec: secrecy-rate regions for relay-assisted downlink NOMA
// Copyright (C) 2026 The nomasec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef NOMASEC_ERRORS_HPP
#define NOMASEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nomasec {

// Invalid argument or violated precondition (negative distance, bad ordering, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Scheme cannot run with this configuration (e.g. too few relays for null steering).
class configuration_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Linear system is rank deficient (projector of dependent columns).
class singularity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Pencil denominator is not positive definite on the deflated subspace.
class deflation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Channel realization lies on a measure-zero degenerate set (collinear vectors).
// The experiment layer redraws such realizations.
class degenerate_realization : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Power split sits on a boundary where the scheme's formulas are undefined.
class boundary_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace detail {

inline void require(bool cond, const std::string& what)
{
    if (!cond) throw domain_error(what);
}

} // namespace detail
} // namespace nomasec

#endif
