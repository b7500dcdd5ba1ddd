// Copyright 2026 The anyonlab Authors
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

#ifndef ANYONLAB_CODELIB_H
#define ANYONLAB_CODELIB_H

#include <stdexcept>
#include <string>
#include <vector>

#include "anyonlab/symplectic.h"

namespace anyonlab {

struct CodeDescriptor {
    std::string name;
    int d, w;
    // one entry per generator: X slots then Z slots, polynomial text
    std::vector<std::vector<std::string>> gens;
    std::string note;
};

class CodeError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Names: trivial, toric, toric2, double_semion, shifted_double_semion, color,
// color_bad, modified_a..modified_d, css_double_semion, six_semion.
// `d` applies to toric/toric2/trivial, `l` to shifted_double_semion.
StabilizerCode builtin(const std::string &name, int d = 0, int l = 0);
std::vector<std::string> builtin_names();
CodeDescriptor builtin_descriptor(const std::string &name, int d = 0, int l = 0);
StabilizerCode from_descriptor(const CodeDescriptor &desc);

StabilizerCode parse_code_file(const std::string &text);
std::string format_code_file(const StabilizerCode &code);

// Builds the CSS code on twice as many qudits: every generator (a|b) gives an
// X-type generator (a, b | 0, 0) and a Z-type generator (0, 0 | b, -a).
StabilizerCode css_doubling(const StabilizerCode &code);

}  // namespace anyonlab

#endif
