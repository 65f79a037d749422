#pragma once

// Everything in one include.
#include "docarl/core/annotation.hpp"
#include "docarl/core/base64.hpp"
#include "docarl/core/box.hpp"
#include "docarl/core/detection.hpp"
#include "docarl/core/document_class.hpp"
#include "docarl/core/error.hpp"
#include "docarl/core/hash.hpp"
#include "docarl/core/image.hpp"
#include "docarl/core/png.hpp"
#include "docarl/eval/evaluate.hpp"
#include "docarl/eval/metrics.hpp"
#include "docarl/eval/report.hpp"
#include "docarl/eval/simulate.hpp"
#include "docarl/feedback/assemble.hpp"
#include "docarl/feedback/store.hpp"
#include "docarl/geometry/anchor_mapping.hpp"
#include "docarl/idgen/generator.hpp"
#include "docarl/idgen/name_corpus.hpp"
#include "docarl/idgen/serial.hpp"
#include "docarl/pipeline/backends.hpp"
#include "docarl/pipeline/oracle.hpp"
#include "docarl/pipeline/pipeline.hpp"
#include "docarl/pipeline/subprocess.hpp"
#include "docarl/render/augment.hpp"
#include "docarl/render/build.hpp"
#include "docarl/render/dataset.hpp"
#include "docarl/render/manifest.hpp"
#include "docarl/render/render.hpp"
#include "docarl/render/split.hpp"
#include "docarl/render/text_raster.hpp"
#include "docarl/service/http_service.hpp"
#include "docarl/similarity/gestalt.hpp"
#include "docarl/templates/registry.hpp"
#include "docarl/templates/template.hpp"
