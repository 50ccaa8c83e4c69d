#pragma once

/**
 * @file superfield.hpp
 * @brief Everything: rings, fields, forms, presets, prolongation, checks.
 */

#include "superfield/abstract.hpp"
#include "superfield/parse.hpp"
#include "superfield/prolong.hpp"
#include "superfield/registry.hpp"
#include "superfield/table.hpp"
#include "superfield/verify.hpp"
