#pragma once

// Umbrella header: fuzzy membership math, relevance-based feature selection,
// substitution encryption and the text-ingestion plumbing around them.

#include "fuzzcrypt/cipher.hpp"
#include "fuzzcrypt/config.hpp"
#include "fuzzcrypt/envelope.hpp"
#include "fuzzcrypt/error.hpp"
#include "fuzzcrypt/feature_select.hpp"
#include "fuzzcrypt/fuzzy.hpp"
#include "fuzzcrypt/ingest.hpp"
#include "fuzzcrypt/pipeline.hpp"
#include "fuzzcrypt/reports.hpp"
