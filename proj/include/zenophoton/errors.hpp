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

#ifndef ZENOPHOTON_ERRORS_HPP
#define ZENOPHOTON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zeno {

/// Bad argument values (negative rates, out-of-range knobs, dimension mismatch).
struct invalid_parameter : std::invalid_argument {
    explicit invalid_parameter(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Occupation pattern that does not exist in the truncated state space.
struct out_of_space : std::domain_error {
    explicit out_of_space(const std::string& msg) : std::domain_error(msg) {}
};

/// Requested fixed-step integration would be unstable.
struct stiffness_error : std::runtime_error {
    explicit stiffness_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Failure to write an output file.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace zeno

#endif
