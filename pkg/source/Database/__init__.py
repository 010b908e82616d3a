from source.Database.DBHelper import CatalogHelper
