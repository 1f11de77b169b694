// Copyright 2026 The spanscore Authors
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

#ifndef SPANSCORE_TEXT_HPP
#define SPANSCORE_TEXT_HPP

#include <string>
#include <string_view>

namespace spanscore {

// Segment text lives in memory as a sequence of Unicode scalar values so
// that span offsets index logical characters, never UTF-8 bytes. Decoding
// is strict: overlong forms, surrogates, and out-of-range values are
// rejected (DataError) rather than passed through.
std::u32string utf8_decode(std::string_view utf8);
std::string utf8_encode(std::u32string_view text);

}  // namespace spanscore

#endif  // SPANSCORE_TEXT_HPP
