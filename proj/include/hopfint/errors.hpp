/* Copyright 2026 The hopfint Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#ifndef HOPFINT_ERRORS_HPP
#define HOPFINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hopfint {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition.
class MalformedInput : public Error {
 public:
  explicit MalformedInput(const std::string& what) : Error("malformed input: " + what) {}
};

// Element handed to a Lie-basis extraction is not primitive.
class NotLie : public Error {
 public:
  explicit NotLie(const std::string& what) : Error("not a Lie element: " + what) {}
};

// Operation needs structure the chosen instance does not have.
class UnsupportedInstance : public Error {
 public:
  explicit UnsupportedInstance(const std::string& what)
      : Error("unsupported instance: " + what) {}
};

// Requested degree or size is beyond a truncation or envelope.
class CutoffExceeded : public Error {
 public:
  explicit CutoffExceeded(const std::string& what) : Error("cutoff exceeded: " + what) {}
};

}  // namespace hopfint

#endif  // HOPFINT_ERRORS_HPP
