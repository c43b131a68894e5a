// Copyright 2026 The Tropicon Authors.
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

#ifndef TROPICON_ERROR_HPP
#define TROPICON_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tropicon {

/** Base class of every error raised by the library. */
class Error : public std::runtime_error
{
    public:
        explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define TROPICON_DEFINE_ERROR(Name)                                         \
    class Name : public Error                                               \
    {                                                                       \
        public:                                                             \
            explicit Name(const std::string& what = #Name) : Error(what) {} \
    }

/** A direction was requested for the zero vector. */
TROPICON_DEFINE_ERROR(ZeroVector);
/** Vectors or matrices of incompatible sizes were combined. */
TROPICON_DEFINE_ERROR(DimensionMismatch);
/** An H-representation describes the empty set. */
TROPICON_DEFINE_ERROR(EmptyPolyhedron);
/** The first argument of a lattice-normal query is not a face of the second. */
TROPICON_DEFINE_ERROR(NotAFace);
/** A face of the wrong codimension was supplied. */
TROPICON_DEFINE_ERROR(WrongCodimension);
/** An operation requiring a loop-free matroid met a loop. */
TROPICON_DEFINE_ERROR(HasLoops);
/** Contraction of a loop was requested. */
TROPICON_DEFINE_ERROR(LoopContraction);
/** A matroid description could not be turned into a rank oracle. */
TROPICON_DEFINE_ERROR(BadMatroid);
/** A complex violates one of its structural invariants. */
TROPICON_DEFINE_ERROR(InvalidComplex);
/** A declared lineality space is not contained in every cell. */
TROPICON_DEFINE_ERROR(DeclarationMismatch);
/** A skeleton below the lineality dimension was requested. */
TROPICON_DEFINE_ERROR(LinealityObstruction);
/** A face passed to a star computation is not a face of any cell. */
TROPICON_DEFINE_ERROR(NotInComplex);
/** A hyperplane is not transverse to a complex. */
TROPICON_DEFINE_ERROR(NotTransverse);
/** A separating-hyperplane query was asked about coinciding cells. */
TROPICON_DEFINE_ERROR(DegenerateInput);
/** A hypergraph with fewer than two facets has no cut. */
TROPICON_DEFINE_ERROR(TooFewFacets);
/** Malformed JSON or command-line input. */
TROPICON_DEFINE_ERROR(ParseError);
/** Unknown generator kind. */
TROPICON_DEFINE_ERROR(UnknownKind);

#undef TROPICON_DEFINE_ERROR

/** An exhaustive subset search would exceed its configured budget. */
class BudgetExceeded : public Error
{
    public:
        BudgetExceeded(std::uint64_t examined, std::uint64_t budget)
            : Error("subset search budget exceeded: examined " + std::to_string(examined)
                    + " subsets, budget " + std::to_string(budget)),
              examined(examined), budget(budget) {}

        std::uint64_t examined;
        std::uint64_t budget;
};

}   // namespace tropicon

#endif
