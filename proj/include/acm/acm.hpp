/*
 * Copyright 2026 The acm-atlas Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "acm/catalog.hpp"
#include "acm/chern.hpp"
#include "acm/classify.hpp"
#include "acm/error.hpp"
#include "acm/rational.hpp"
#include "acm/report.hpp"
#include "acm/rr.hpp"
#include "acm/serre.hpp"
#include "acm/variety.hpp"
#include "acm/verify.hpp"
