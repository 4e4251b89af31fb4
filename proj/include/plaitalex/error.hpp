/*
   Copyright 2026 The plaitalex Authors

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

namespace plaitalex {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (braid words, serialized polynomials, fixtures).
class SyntaxError : public Error {
public:
    using Error::Error;
};

/// A generator index that is not valid for the strand-pair count.
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A sigma word with a suffix that no rewrite pattern covers.
class UnmatchedResidue : public Error {
public:
    using Error::Error;
};

class NotColorPreserving : public Error {
public:
    using Error::Error;
};

/// A Laurent polynomial that has no expansion in z = u - u^-1.
class NotConwayRepresentable : public Error {
public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

/// The operation needs at least two strand pairs.
class NTooSmall : public Error {
public:
    using Error::Error;
};

class NonSquare : public Error {
public:
    using Error::Error;
};

class BadSize : public Error {
public:
    using Error::Error;
};

}  // namespace plaitalex
