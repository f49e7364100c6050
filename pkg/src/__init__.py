# jacobi-spectra core packages
