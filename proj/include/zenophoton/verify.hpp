// Copyright 2026 The zenophoton authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZENOPHOTON_VERIFY_HPP
#define ZENOPHOTON_VERIFY_HPP

#include <string>
#include <vector>

namespace zeno {

struct VerifyCheck {
    std::string name;
    double measured = 0.0;  // deviation / defect actually observed
    double bound = 0.0;     // largest acceptable value
    bool pass = false;
};

struct VerifyOptions {
    unsigned seed = 20260823;
    bool corrupt_u2 = false;  // negative-control hook: perturb one U2 entry
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_pass() const;
    std::string to_text() const;
};

/// Run every module's invariant suite at fixed seeds and grids.
VerifyReport run_verify(const VerifyOptions& options = {});

}  // namespace zeno

#endif
