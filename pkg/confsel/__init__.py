import pkg_resources

try:
  __version__ = (
    pkg_resources
    .get_distribution('confsel')
    .version
  )
except pkg_resources.DistributionNotFound:
  # running from a source checkout
  __version__ = '0.0.0.dev0'
