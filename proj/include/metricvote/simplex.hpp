// Copyright 2026 The metricvote Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <vector>

#include "metricvote/instance.hpp"

namespace metricvote {

/// Regular k-simplex with unit edges embedded in R^k.
struct SimplexGeometry {
    std::size_t k = 0;
    std::vector<Point> vertices;  // k + 1 points
    Point circumcenter;
    double circumradius = 0.0;
    double height = 0.0;

    /// Circumcenter of the face spanned by the given vertices (its centroid).
    Point face_circumcenter(const std::vector<std::size_t>& face) const;
};

double simplex_circumradius(std::size_t k);
double simplex_height(std::size_t k);

SimplexGeometry simplex(std::size_t k);

double euclidean_distance(const Point& a, const Point& b);
Point midpoint(const Point& a, const Point& b);

}  // namespace metricvote
