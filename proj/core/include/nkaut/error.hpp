/*
   Copyright 2026 The nkaut Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef NKAUT_ERROR_HPP
#define NKAUT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nk {

/// Base class for domain errors: violated preconditions, field mismatches,
/// insufficient precision, inconsistent input data.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed text literal (field, element, series, cover, ...).
class ParseError : public Error {
   public:
    using Error::Error;
};

/// An operation needed more absolute precision than its input carried.
class PrecisionError : public Error {
   public:
    using Error::Error;
};

}  // namespace nk

#endif
