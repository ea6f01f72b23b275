// Copyright 2026 The dsplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DSPLAB_TESTS_HELPERS_HPP
#define DSPLAB_TESTS_HELPERS_HPP

#include <string>

#include "doctest.h"

// Checks that `expr` throws `type` and that its message contains `text`.
#define CHECK_THROWS_CONTAINING(expr, type, text)                             \
  do {                                                                        \
    std::string caught_message_;                                              \
    bool caught_ = false;                                                     \
    try {                                                                     \
      (void)(expr);                                                           \
    } catch (const type& e_) {                                                \
      caught_ = true;                                                         \
      caught_message_ = e_.what();                                            \
    }                                                                         \
    CHECK_MESSAGE(caught_, "expected " #type " from " #expr);                 \
    CHECK_MESSAGE(caught_message_.find(text) != std::string::npos,            \
                  "message: " << caught_message_);                            \
  } while (false)

#endif  // DSPLAB_TESTS_HELPERS_HPP
