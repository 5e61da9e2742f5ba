"""
Script to export the bounded poset catalogue with a classification report per poset.
"""
import os
import sys
import logging

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.controllers.classification_controller import ClassificationController
from app.models.enumeration import enumerate_posets
from app.models.poset import serialize_poset
from app.settings import get_settings

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

# Export settings
EXPORT_DIR = os.getenv("ORTHOLOGIC_EXPORT_DIR", "catalogue")
EXPORT_MAX = int(os.getenv("ORTHOLOGIC_EXPORT_MAX", str(get_settings().cap)))

def export_catalogue(directory, n_max):
    """Write <size>-<k>.poset and <size>-<k>.json for every bounded poset up to n_max."""
    logger.info(f"Exporting bounded posets of size <= {n_max} to {directory}")
    os.makedirs(directory, exist_ok=True)
    controller = ClassificationController()
    total = 0

    for n in range(1, n_max + 1):
        catalogue = enumerate_posets(n, "bounded")
        for k, poset in enumerate(catalogue):
            stem = os.path.join(directory, f"{n}-{k:03d}")
            with open(stem + ".poset", "w", encoding="utf-8") as handle:
                handle.write(serialize_poset(poset))

            report = controller.classify(poset)
            with open(stem + ".json", "w", encoding="utf-8") as handle:
                handle.write(report.model_dump_json(indent=2) + "\n")
        logger.info(f"Size {n}: {len(catalogue)} posets")
        total += len(catalogue)

    logger.info(f"Exported {total} posets")
    return total

def main():
    """Main function to export the catalogue."""
    try:
        export_catalogue(EXPORT_DIR, EXPORT_MAX)
        logger.info("Catalogue export completed successfully!")
    except Exception as e:
        logger.error(f"Error exporting catalogue: {str(e)}")
        sys.exit(1)

if __name__ == "__main__":
    main()
