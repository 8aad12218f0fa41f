// Copyright 2026 The Snipforge Authors
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

#ifndef SNIPFORGE_SNIPPET_H_
#define SNIPFORGE_SNIPPET_H_

#include <string>
#include <string_view>

namespace snipforge {

struct Snippet {
  std::string id;
  std::string raw_text;
  std::string wrapped_text;
  bool wrap_applied = false;
  std::string origin_path;
  // Lines added in front of raw_text by wrapping (0 or 1).
  int line_offset = 0;
};

// Keeps snippets that already mention `import`, `package` or `class` (as
// keyword tokens) verbatim; encloses everything else in
//
//   public class C_<id> {
//   <raw>
//   }
//
// Throws Error(kEmptySnippet) for whitespace-only input.
Snippet WrapSnippet(std::string_view raw, std::string_view id);

// `C_` + id with every non-identifier character replaced by '_'.
std::string WrapperClassName(std::string_view id);

}  // namespace snipforge

#endif  // SNIPFORGE_SNIPPET_H_
