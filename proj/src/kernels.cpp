// Copyright 2026 The robustkit authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "robustkit/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace robustkit::kernels {

const Ops& active() {
  static const Ops& selected = []() -> const Ops& {
    if (const char* env = std::getenv("ROBUSTKIT_KERNELS")) {
      const std::string_view want(env);
      if (want == "scalar") return scalar_ops();
      if (want == "avx2") {
        if (const Ops* ops = avx2_ops()) return *ops;
        return scalar_ops();
      }
    }
    if (const Ops* ops = avx2_ops()) return *ops;
    return scalar_ops();
  }();
  return selected;
}

}  // namespace robustkit::kernels
