/*
   Copyright 2026 The txconflict Authors

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

#pragma once

#include <stdexcept>
#include <string>

namespace txconflict {

//! Base class for all txconflict errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

//! Malformed state-key payload or canonical encoding.
class EncodingError : public Error {
  public:
    using Error::Error;
};

//! Structurally invalid input data (raw chain JSON, workload files, metrics files).
class ParseError : public Error {
  public:
    using Error::Error;
};

//! Invalid parameter or command-line usage; maps to exit code 2 in the CLI.
class UsageError : public Error {
  public:
    using Error::Error;
};

//! Filesystem or network failure.
class IoError : public Error {
  public:
    using Error::Error;
};

}  // namespace txconflict
