// Copyright 2026 The vdcwitness Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <json.hpp>

#include "core/arcs.hpp"
#include "core/averaging.hpp"
#include "core/expsum.hpp"
#include "core/kernels.hpp"
#include "core/lowerbound.hpp"
#include "core/oracles.hpp"
#include "core/poly.hpp"
#include "core/witness.hpp"

namespace vdc {

using Json = nlohmann::ordered_json;

// Frequencies are written as decimal strings: they can exceed 2^53.
Json cosine_to_json(const SparseCosinePolynomial& T);
SparseCosinePolynomial cosine_from_json(const Json& j);

Json scheme_to_json(const AveragingScheme& sc);
AveragingScheme scheme_from_json(const Json& j);

// Parses text, raising kParse on malformed input.
Json parse_json(const std::string& text);

Json to_json(const OddPolynomial& f);
Json to_json(const CompleteSumResult& r);
Json to_json(const C0Estimate& e, bool with_rows);
Json to_json(const ArcLocation& loc);
Json to_json(const SchemeVerdict& v);
Json to_json(const LemmaSuiteReport& r);
Json to_json(const ReductionCertificate& c);
Json to_json(const PaperParameters& p);
Json to_json(const ScanResult& s);
Json to_json(const WitnessReport& r);
Json to_json(const DeltaSearch& d);
Json to_json(const GammaBracket& b);
Json to_json(const DiffAvoidingSet& s);
Json to_json(const ResidueClassSystem& sys);
Json to_json(const PrimeInequality& r);
Json to_json(const LowerBound& b);

}  // namespace vdc
