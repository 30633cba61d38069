from .base_colex import BaseColexBuilder, puncture
from .tesseract_colex import build_tesseract


class TetrahedralColexBuilder(BaseColexBuilder):
    """
    The punctured tesseract: 15 sites, 4 cells, encodes one qubit.
    """

    def get_default_hparams_dict(self):
        """
        Returns:
            A dict with the following hyperparameters.

            punctured_site: tesseract site removed to open the colex.
        """
        default_hparams = super(TetrahedralColexBuilder, self).get_default_hparams_dict()
        hparams = dict(
            punctured_site=0,
        )
        return dict(list(default_hparams.items()) + list(hparams.items()))

    def build(self):
        return puncture(build_tesseract(), self.hparams.punctured_site)
