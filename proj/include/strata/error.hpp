/*
   Copyright 2026 The strata-forge Authors

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

#ifndef STRATA_ERROR_HPP
#define STRATA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace strata {

/* Bad input: non-prime characteristic, singular model, malformed tree, ... */
class ValidationError : public std::invalid_argument {
   public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/* A configured enumeration or memory cap would be exceeded. */
class BudgetError : public std::runtime_error {
   public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/* An internal cross-check failed; always indicates a bug, never bad input. */
class ConsistencyError : public std::logic_error {
   public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace strata

#endif
