/* Copyright 2026 The pdalign Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef PDALIGN_ERRORS_HPP_
#define PDALIGN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace pdalign {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or truncated file content.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Readable container but an encoding we do not handle.
class UnsupportedCodecError : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failure (open/read/write).
class IoError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration value or combination.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Tensor/matrix dimension mismatch.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Violated call contract (preconditions other than shapes).
class ContractError : public Error {
 public:
  using Error::Error;
};

// CTC lattice cannot fit the target into the given number of frames.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, int required_min_frames)
      : Error(what), required_min_frames(required_min_frames) {}
  int required_min_frames;
};

// Training could not proceed (e.g. no feasible utterances).
class TrainingError : public Error {
 public:
  using Error::Error;
};

}  // namespace pdalign

#endif  // PDALIGN_ERRORS_HPP_
