// Copyright 2026 The cliquenet Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace cliquenet {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Generator or baseline parameters violate their preconditions.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Preferential draw requested on a graph whose degree sum is zero.
class DegenerateDistribution : public Error {
 public:
  using Error::Error;
};

// Shortest-path statistics asked of a disconnected graph.
class UnreachablePair : public Error {
 public:
  using Error::Error;
};

// Dense linear algebra requested above the configured node cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

class IncompleteResults : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cliquenet
