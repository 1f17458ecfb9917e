// SPDX-License-Identifier: Apache-2.0
//
// thzprop - sub-THz urban microcell propagation models and link budget tools
// Copyright (C) 2026 thzprop contributors
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

#ifndef THZPROP_ERRORS_HPP
#define THZPROP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thzprop
{

/// Base class for all library errors.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file. Carries the 1-based line number of the offending row.
class ParseError : public Error
{
  public:
    ParseError(const std::string &what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace thzprop

#endif
